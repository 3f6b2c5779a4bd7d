import pandas as pd
import matplotlib.pyplot as plt

cars = pd.read_csv("data/cars.csv")
origins = sorted(cars["origin"].unique())
fig, axes = plt.subplots(1, len(origins), sharey=True)
for ax, origin in zip(axes, origins):
    group = cars[cars["origin"] == origin]
    ax.scatter(group["horsepower"], group["mpg"])
    ax.set_title(origin)
    ax.set_xlabel("horsepower")
axes[0].set_ylabel("mpg")
plt.show()
